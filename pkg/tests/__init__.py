"""Test suite for NucleusKit"""
