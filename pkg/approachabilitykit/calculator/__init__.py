# -*- coding: utf-8 -*-
from approachabilitykit.calculator import geometry
from approachabilitykit.calculator import regret
from approachabilitykit.calculator import responses
from approachabilitykit.calculator import targets
from approachabilitykit.calculator import strategy_blocks
from approachabilitykit.calculator import blackwell
from approachabilitykit.calculator import record
from approachabilitykit.calculator import scenarios
