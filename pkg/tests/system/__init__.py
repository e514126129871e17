# System tests for harmonica
