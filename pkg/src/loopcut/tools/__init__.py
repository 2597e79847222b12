"""Loopcut tool functions.

Text-in, JSON-out wrappers around the services, registered by the MCP server.
"""

from .solving import generate_network_text, solve_graph_text, solve_network_text

TOOLS = [solve_network_text, solve_graph_text, generate_network_text]

__all__ = ["TOOLS", "generate_network_text", "solve_graph_text", "solve_network_text"]
