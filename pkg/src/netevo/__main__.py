import sys

from netevo.cli import main

sys.exit(main())
