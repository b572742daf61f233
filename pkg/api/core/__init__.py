"""Server configuration and error translation."""
