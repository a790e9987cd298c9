#!/usr/bin/env python3

# -------- import
from .cli import main

# -------- main
exit(main())
