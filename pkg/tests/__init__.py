# Tests module

