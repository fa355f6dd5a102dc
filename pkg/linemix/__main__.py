import sys

from linemix.main import main

sys.exit(main())
