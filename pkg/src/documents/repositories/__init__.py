# This file makes the 'repositories' directory a Python package.
