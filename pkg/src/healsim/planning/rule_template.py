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

from dNG.runtime.value_exception import ValueException

from healsim.data.architecture.change_event import ChangeEvent
from healsim.data.utility.utility_engine import UtilityEngine

from .rule_match import RuleMatch

class RuleTemplate(object):
    """
A repair rule template. It is applicable to issues of the failure kinds
given and executes one repair action on the architecture model.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: planning
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    HW_REDEPLOY = "HW_REDEPLOY"
    """
Heavy-weight redeployment of a component
    """
    LW_REDEPLOY = "LW_REDEPLOY"
    """
Light-weight redeployment of a component
    """
    RECREATE_CONNECTOR = "RECREATE_CONNECTOR"
    """
Recreation of a crashed connector
    """
    REPLACE = "REPLACE"
    """
Replacement of a component by an alternative component type
    """
    RESTART = "RESTART"
    """
Restart of a component
    """

    def __init__(self, _id, kind, applicable_to, cost, alternative = None, success_likelihood = 1.0):
        """
Constructor __init__(RuleTemplate)

:param _id: Rule template ID
:param kind: Repair action kind
:param applicable_to: Failure kinds handled
:param cost: Execution cost in seconds
:param alternative: Alternative index used by a replacement
:param success_likelihood: Likelihood of a successful execution

:since: v0.1.00
        """

        if (cost <= 0): raise ValueException("Rule cost must be positive")
        if (success_likelihood <= 0 or success_likelihood > 1): raise ValueException("Success likelihood must be in (0, 1]")
        if (kind == RuleTemplate.REPLACE and alternative is None): raise ValueException("Replacement rules require an alternative index")

        self.alternative = alternative
        """
Alternative index used by a replacement
        """
        self.applicable_to = tuple(applicable_to)
        """
Failure kinds handled
        """
        self.cost = float(cost)
        """
Execution cost in seconds
        """
        self.id = _id
        """
Rule template ID
        """
        self.kind = kind
        """
Repair action kind
        """
        self.success_likelihood = success_likelihood
        """
Likelihood of a successful execution
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<RuleTemplate {0} cost={1!r}>".format(self.id, self.cost)
    #

    def create_rule_match(self, model, issue, utility_increase = None, target_type = None):
        """
Instantiates this template for the given issue.

:param model: Architecture model
:param issue: Issue to handle
:param utility_increase: Estimated utility increase; predicted from the
                         model if not defined
:param target_type: Component type of a replacement already looked up

:return: (object) RuleMatch; None if not applicable
:since:  v0.1.00
        """

        _return = None

        if (issue.kind in self.applicable_to):
            if (self.kind == RuleTemplate.REPLACE and target_type is None): target_type = self.get_target_type(model, issue)

            if (self.kind != RuleTemplate.REPLACE or target_type is not None):
                _return = RuleMatch(self, issue, 0.0, self.cost, target_type)
                _return.utility_increase = (UtilityEngine.rule_impact(model, _return) if (utility_increase is None) else utility_increase)
            #
        #

        return _return
    #

    def execute(self, model, rule_match, time):
        """
Executes the repair action for the given rule match.

:param model: Architecture model
:param rule_match: Rule match
:param time: Virtual time of the repair

:return: (list) Change events caused
:since:  v0.1.00
        """

        issue = rule_match.issue

        if (self.kind == RuleTemplate.RECREATE_CONNECTOR): _return = model.recreate_connector(issue.match.anchor, time)
        elif (self.kind == RuleTemplate.REPLACE): _return = model.replace_component(issue.affected_component, rule_match.target_type, time)
        elif (self.kind == RuleTemplate.RESTART): _return = model.restart_component(issue.affected_component, time)
        else: _return = model.redeploy_component(issue.affected_component, time, (self.kind == RuleTemplate.HW_REDEPLOY))

        return _return
    #

    def get_impact(self, issue, target_type = None, u1 = None):
        """
Returns the utility increase of handling the given issue with this
template.

:param issue: Issue to handle
:param target_type: Component type of a replacement
:param u1: Utility of the positive match of the affected component;
           computed if not defined

:return: (float) Predicted utility increase
:since:  v0.1.00
        """

        _return = abs(issue.utility_drop)

        if (self.kind == RuleTemplate.REPLACE):
            component = issue.affected_component
            if (u1 is None): u1 = UtilityEngine.u1(issue.model, issue.match)

            _return += component.criticality * target_type.reliability * component.get_connectivity() - u1
        #

        return _return
    #

    def get_target_type(self, model, issue):
        """
Returns the component type a replacement would use.

:param model: Architecture model
:param issue: Issue to handle

:return: (object) ComponentType; None if not a replacement or if the
         alternative is the current type
:since:  v0.1.00
        """

        _return = None

        if (self.kind == RuleTemplate.REPLACE):
            component = issue.affected_component
            _return = model.get_alternative_type(component.slot, self.alternative)

            if (_return is component.component_type): _return = None
        #

        return _return
    #

    def is_applicable(self, model, issue):
        """
Returns true if this template is applicable to the given issue.

:param model: Architecture model
:param issue: Issue to handle

:return: (bool) True if applicable
:since:  v0.1.00
        """

        _return = (issue.kind in self.applicable_to)
        if (_return and self.kind == RuleTemplate.REPLACE): _return = (self.get_target_type(model, issue) is not None)

        return _return
    #

    def predict_impact(self, model, rule_match):
        """
Returns the utility increase of the given rule match. A replacement
disables the positive match of the old component and enables the one of
the new component.

:param model: Architecture model
:param rule_match: Rule match

:return: (float) Predicted utility increase
:since:  v0.1.00
        """

        return self.get_impact(rule_match.issue, rule_match.target_type)
    #
#
