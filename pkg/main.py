"""
Relational gadgets: command-line entry point.

Loads .env, configures Loguru and dispatches to the click command group.

Run:
    uv run main.py star --graph g.json --gadget m.json
    uv run main.py verify all --max-vertices 3
"""

import sys

from dotenv import load_dotenv

# core.constants reads the environment at import time
load_dotenv()

from cli.app import run  # noqa: E402
from core.constants import LOG_FILE, LOG_LEVEL  # noqa: E402
from utils.logger import setup_logger  # noqa: E402


def main() -> int:
    setup_logger(LOG_LEVEL, LOG_FILE)
    return run()


if __name__ == "__main__":
    sys.exit(main())
