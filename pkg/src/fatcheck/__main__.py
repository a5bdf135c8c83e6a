import sys

from fatcheck.cli import main

sys.exit(main())
