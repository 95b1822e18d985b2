"""Root multiplicities and the vertex taxonomy."""
