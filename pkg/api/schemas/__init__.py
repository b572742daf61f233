"""Request schemas for the dlcoh API."""
