"""Test package for rtm-algebra."""
