import sys
from os.path import dirname, realpath, join

sys.path.insert(0, join(dirname(dirname(realpath(__file__))), 'tile-workbench'))
