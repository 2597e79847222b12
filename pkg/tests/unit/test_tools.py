"""Unit tests for the MCP tools and server wiring."""

import json

import pytest

from loopcut.core.errors import ParseError
from loopcut.server import create_argument_parser, create_mcp_server
from loopcut.tools import TOOLS
from loopcut.tools.solving import generate_network_text, solve_graph_text, solve_network_text


class TestSolvingTools:
    """Test the text-in, JSON-out tools."""

    @pytest.mark.unit
    def test_solve_network_text(self):
        text = "node a 2\nnode b 2\nnode c 2\nedge a b\nedge b c\nedge a c\n"
        data = json.loads(solve_network_text(text))
        assert data["vertices"] == ["a"]
        assert data["instance_count"] == 2
        assert "trace" not in data
        assert "charges" not in data

    @pytest.mark.unit
    def test_solve_graph_text_exact(self):
        text = "vertex u 1\nvertex v 1\n" + "".join(
            f"vertex p{i} 0.6\nedge u p{i}\nedge p{i} v\n" for i in range(1, 4)
        )
        data = json.loads(solve_graph_text(text, algorithm="exact"))
        assert data["vertices"] == ["u"]

    @pytest.mark.unit
    def test_parse_errors_propagate(self):
        with pytest.raises(ParseError, match="<graph>:1:"):
            solve_graph_text("vertex a\n")

    @pytest.mark.unit
    def test_generate_network_text(self):
        first = json.loads(generate_network_text(6, 8, seed=4))
        second = json.loads(generate_network_text(6, 8, seed=4))
        assert first == second
        assert first["seed"] == 4
        assert first["network"].count("node ") == 6
        assert first["network"].count("edge ") == 8


class TestServer:
    """Test MCP server construction."""

    @pytest.mark.unit
    def test_create_server(self, config):
        server = create_mcp_server(config)
        assert server.name == "loopcut-mcp"
        assert len(TOOLS) == 3

    @pytest.mark.unit
    def test_argument_defaults(self):
        args = create_argument_parser().parse_args([])
        assert args.transport == "stdio"
        assert args.port == 9000
        assert args.config is None
