"""Loopcut MCP server entry point.

Exposes the solve and generate tools over the Model Context Protocol.
"""

import argparse
import sys

from fastmcp import FastMCP

from . import __version__
from .core.config import LoopcutConfig
from .core.errors import LoopcutError
from .core.logging import configure_logging, get_logger
from .tools import TOOLS

logger = get_logger(__name__)


def create_argument_parser() -> argparse.ArgumentParser:
    """Create command line argument parser."""
    parser = argparse.ArgumentParser(
        description="Loopcut MCP Server - loop cutsets and weighted feedback vertex sets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Run over stdio with environment configuration
  loopcut-mcp

  # Run with a config file over HTTP
  loopcut-mcp --config config/loopcut.yaml --transport http --port 9000
        """
    )

    parser.add_argument(
        "--config",
        type=str,
        help="Path to configuration YAML file (default: use environment variables)"
    )

    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Override the configured logging level"
    )

    parser.add_argument(
        "--transport",
        choices=["stdio", "http"],
        default="stdio",
        help="MCP transport protocol (default: stdio)"
    )

    parser.add_argument(
        "--host",
        default="127.0.0.1",
        help="Host address for HTTP transport (default: 127.0.0.1)"
    )

    parser.add_argument(
        "--port",
        type=int,
        default=9000,
        help="Port for HTTP transport (default: 9000)"
    )

    return parser


def load_config(args: argparse.Namespace) -> LoopcutConfig:
    """Load configuration from file or environment."""
    if args.config:
        config = LoopcutConfig.from_file(args.config)
    else:
        config = LoopcutConfig.from_environment()
    if args.log_level:
        config.log_level = args.log_level
    return config


def create_mcp_server(config: LoopcutConfig) -> FastMCP:
    """Create the MCP server and register every tool."""
    server = FastMCP(name="loopcut-mcp")
    for tool in TOOLS:
        server.tool(tool)

    logger.info(
        "MCP server created",
        tools=[tool.__name__ for tool in TOOLS],
        default_algorithm=config.default_algorithm,
        oracle_max_vertices=config.oracle.max_vertices,
    )
    return server


def main() -> int:
    """Main entry point for the loopcut MCP server."""
    try:
        args = create_argument_parser().parse_args()
        config = load_config(args)
        configure_logging(level=config.log_level, format_json=config.log_json)
        logger.info("Starting loopcut MCP server", version=__version__, transport=args.transport)

        server = create_mcp_server(config)
        if args.transport == "stdio":
            server.run(transport="stdio")
        else:
            server.run(transport=args.transport, host=args.host, port=args.port)

        logger.info("Loopcut MCP server stopped")
        return 0

    except KeyboardInterrupt:
        logger.info("Received interrupt signal, shutting down")
        return 0
    except LoopcutError as e:
        logger.error("Loopcut error", error=str(e))
        return e.exit_code
    except Exception:
        logger.exception("Unexpected error occurred")
        return 2


if __name__ == "__main__":
    sys.exit(main())
