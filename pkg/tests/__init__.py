"""
Test suite for berkram.

This package contains the pytest modules for berkram: one module per
library module, end-to-end command line runs, and the acceptance checks
against the known example values.

Author: Tom Pravetz
License: MIT
"""
