"""Core loopcut infrastructure: configuration, errors, logging."""
