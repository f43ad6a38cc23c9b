import os
import sys

# Make the helper modules next to the tests importable regardless of the
# directory pytest is invoked from.
sys.path.insert(0, os.path.dirname(__file__))
