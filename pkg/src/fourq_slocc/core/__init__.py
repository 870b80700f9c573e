"""Core shared logic for the four-qubit SLOCC toolkit."""
