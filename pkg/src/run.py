import sys

from qfock.engine.handler import main

if __name__ == '__main__':
    sys.exit(main())
