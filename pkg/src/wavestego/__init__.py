"""Time-domain speech-in-speech hiding with an invertible coupling network."""

__version__ = "0.1.0"
