"""Flows for binary quadratic forms, compositions and sieve experiments."""
