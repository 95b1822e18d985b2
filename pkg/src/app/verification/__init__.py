"""Executable claim censuses and reports."""
