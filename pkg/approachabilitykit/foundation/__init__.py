# -*- coding: utf-8 -*-
from approachabilitykit.foundation import constants
from approachabilitykit.foundation import exceptions
from approachabilitykit.foundation import utils
