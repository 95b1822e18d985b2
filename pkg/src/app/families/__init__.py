"""Named graphs and extremal families."""
