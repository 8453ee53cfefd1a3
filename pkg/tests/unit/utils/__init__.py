"""Unit tests for the wiggly_continua utils module."""
