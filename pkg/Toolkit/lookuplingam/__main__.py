import sys

from lookuplingam.main import main

sys.exit(main())
