"""weylfusion - bases, caractères gradués et modules de fusion pour sl_{r+1}[t]"""

__version__ = "1.0.0"
