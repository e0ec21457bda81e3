"""
epglab 主程序
"""

import sys

from epglab.cli import main


if __name__ == "__main__":
    sys.exit(main())
