# Security tests for harmonica
