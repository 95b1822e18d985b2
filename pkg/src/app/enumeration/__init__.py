"""Isomorph-free generation of trees and connected graphs."""
