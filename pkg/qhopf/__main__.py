import sys

from qhopf.cli.main import main

sys.exit(main())
