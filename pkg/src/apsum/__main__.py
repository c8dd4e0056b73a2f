import sys

from apsum.cli import main

sys.exit(main())
