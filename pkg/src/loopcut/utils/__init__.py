"""Loopcut utilities: text formats and a union-find forest."""
