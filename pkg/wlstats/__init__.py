"""Word-length statistics for multilingual text corpora."""

VERSION = '0.1.0'
