// placeholder, filled in with solver benchmarks
