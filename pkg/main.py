#!/usr/bin/env python3
"""Main entry point for rtm-algebra."""

import sys
from pathlib import Path

from dotenv import load_dotenv

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli.app import main  # noqa: E402

# Load environment variables
load_dotenv()


if __name__ == "__main__":
    main()
