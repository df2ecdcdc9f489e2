"""Binary quadratic form algebra and sieve harness for prime values of forms."""
