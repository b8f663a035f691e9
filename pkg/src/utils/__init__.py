"""Shared utility modules for configuration and logging."""
