"""A closed-form table through the command line entry point.

Run:  python demos/closed_form_table.py
"""

from higgsy.cli import dispatch

# Same as: higgsy table --n-max 5 --g 2
dispatch(["table", "--n-max", "5", "--g", "2"])

# One entry as JSON, with coefficients serialized as strings.
dispatch(["ygenus", "--n", "3", "--d", "1", "--g", "3", "--format", "json"])
