# Performance tests for harmonica
