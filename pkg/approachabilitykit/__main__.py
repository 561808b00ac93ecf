# -*- coding: utf-8 -*-
import sys
from approachabilitykit.harness.cli import main


sys.exit(main())
