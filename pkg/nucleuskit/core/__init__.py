"""Core NucleusKit engine, configuration and errors"""
