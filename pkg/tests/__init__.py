"""Test suite for NYC Mobility & Weather Analytics Platform."""
