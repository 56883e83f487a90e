from .field import EchelonForm, PrimeField

__all__ = ["EchelonForm", "PrimeField"]
