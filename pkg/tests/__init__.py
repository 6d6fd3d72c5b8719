"""CompSet Toolkit Test Suite"""
__version__ = '1.0.0'
