"""Graph representation, graph6 I/O and canonical codes."""
