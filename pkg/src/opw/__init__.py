"""opw: a desk-scale workbench for the opetopic calculus."""

__version__ = "0.1.0"
