import os
import sys

# Let test modules import the sibling oracle/fixture modules directly.
sys.path.insert(0, os.path.dirname(__file__))
