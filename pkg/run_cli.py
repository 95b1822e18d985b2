#!/usr/bin/env python3
"""
Matchcrit command-line launcher
Sets up paths and dispatches to the CLI
"""

import sys
from pathlib import Path

project_root = Path(__file__).parent
sys.path.insert(0, str(project_root / "src"))

if __name__ == "__main__":
    from cli import main

    sys.exit(main())
