# -*- coding: utf-8 -*-

"""
healsim
Architectural self-healing simulator
----------------------------------------------------------------------------
(C) direct Netware Group - All rights reserved

The following license agreement remains valid unless any additions or
changes are being made by direct Netware Group in a written form.

This program is free software; you can redistribute it and/or modify it
under the terms of the GNU General Public License as published by the
Free Software Foundation; either version 2 of the License, or (at your
option) any later version.

This program is distributed in the hope that it will be useful, but WITHOUT
ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or
FITNESS FOR A PARTICULAR PURPOSE. See the GNU General Public License for
more details.

You should have received a copy of the GNU General Public License along with
this program; if not, write to the Free Software Foundation, Inc.,
51 Franklin Street, Fifth Floor, Boston, MA 02110-1301, USA.
----------------------------------------------------------------------------
https://www.direct-netware.de/redirect?licenses;gpl
----------------------------------------------------------------------------
"""

from time import perf_counter

from dNG.module.named_loader import NamedLoader

from .plan import Plan
from .rule_templates import RuleTemplates

class AbstractPlanner(object):
    """
Abstract planner measuring the wall clock time of each planning step.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    id = None
    """
Planner ID
    """

    def __init__(self, templates = None):
        """
Constructor __init__(AbstractPlanner)

:param templates: Rule templates; default ones if not defined

:since: v0.1.00
        """

        self.log_handler = NamedLoader.get_singleton("dNG.data.logging.LogHandler", False)
        """
The LogHandler is called whenever debug messages should be logged or errors
happened.
        """
        self.rule_instantiations = 0
        """
Number of rule matches created
        """
        self.templates = (RuleTemplates.get_default() if (templates is None) else templates)
        """
Rule templates
        """
        self.templates_by_kind = RuleTemplates.get_by_failure_kind(self.templates)
        """
Rule templates applicable per failure kind
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<{0} id={1}>".format(self.__class__.__name__, self.id)
    #

    def _create_rule_match(self, template, model, issue, utility_increase = None, target_type = None):
        """
Instantiates the given template and counts the rule matches created.

:param template: Rule template
:param model: Architecture model
:param issue: Issue to handle
:param utility_increase: Estimated utility increase
:param target_type: Component type of a replacement already looked up

:return: (object) RuleMatch; None if not applicable
:since:  v0.1.00
        """

        _return = template.create_rule_match(model, issue, utility_increase, target_type)
        if (_return is not None): self.rule_instantiations += 1

        return _return
    #

    def plan(self, annotations, model, k = None):
        """
Selects and orders the rule matches to execute for the current issues.

:param annotations: Annotations
:param model: Architecture model
:param k: Maximum number of rule matches; the annotations value if not
          defined

:return: (object) Plan instance
:since:  v0.1.00
        """

        if (k is not None): annotations.k = k

        start_time = perf_counter()
        rule_matches = self._plan(annotations, model)
        planning_time = perf_counter() - start_time

        if (self.log_handler is not None):
            self.log_handler.debug("{0!r} planned {1:d} of {2:d} issues in {3:.6f}s", self, len(rule_matches), len(annotations), planning_time, context = "planning")
        #

        return Plan(rule_matches, self.id, planning_time)
    #

    def _plan(self, annotations, model):
        """
Planner specific implementation of "plan()".

:param annotations: Annotations
:param model: Architecture model

:return: (list) Ordered rule matches
:since:  v0.1.00
        """

        raise NotImplementedError()
    #
#
