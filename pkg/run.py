"""Script de lancement simple de weylfusion"""

import sys

from weylfusion.main import main

if __name__ == "__main__":
    sys.exit(main())
