# -*- coding: utf-8 -*-
from approachabilitykit.foundation.constants import *
from approachabilitykit.foundation.exceptions import *
from approachabilitykit.calculator.geometry import *
from approachabilitykit.calculator.regret import *
from approachabilitykit.calculator.responses import *
from approachabilitykit.calculator.targets import *
from approachabilitykit.calculator.strategy_blocks import *
from approachabilitykit.calculator.blackwell import *
from approachabilitykit.calculator.record import *
from approachabilitykit.calculator.scenarios import *
__all__ = ["geometry", "regret", "responses", "targets", "strategy_blocks", "blackwell", "record", "scenarios",
           "BlockStrategy", "BlackwellStrategy", "Scenario", "RunRecord", "run"]
