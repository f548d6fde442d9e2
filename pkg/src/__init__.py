"""
Powerful sets

Construction, verification, reconstruction and isomorph-free enumeration of
powerful sets: binary codes in which every zero-constraint pattern selects a
power-of-2 number of codewords.
"""

__version__ = "1.0.0"
