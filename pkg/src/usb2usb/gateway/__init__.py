"""Operator surface: CLI and local HTTP/event-stream service."""
