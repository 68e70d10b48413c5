import sys
from os.path import dirname

sys.path.insert(0, dirname(dirname(__file__)))
from wildrep.cli import main  # noqa: E402


if __name__ == '__main__':
    main(prog_name='wildrep')
