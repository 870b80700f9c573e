"""Four-qubit SLOCC invariants, local operators and equivalence checks."""
