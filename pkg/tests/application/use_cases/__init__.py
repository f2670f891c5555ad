"""Use cases tests."""
