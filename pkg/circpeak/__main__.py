import sys

from circpeak.cli.main import main

sys.exit(main())
