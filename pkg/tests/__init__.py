"""Loopcut test suite."""
