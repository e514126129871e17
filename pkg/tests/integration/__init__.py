# Integration tests for harmonica
