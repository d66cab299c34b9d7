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

class Component(object):
    """
A component instance deployed in a shop slot.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: architecture
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    STATE_UNDEPLOYED = "UNDEPLOYED"
    """
Component is not deployed
    """
    STATE_DEPLOYED = "DEPLOYED"
    """
Component is deployed but not started
    """
    STATE_STARTED = "STARTED"
    """
Component is started
    """
    STATE_CRASHED = "CRASHED"
    """
Component crashed
    """
    STATE_REMOVED = "REMOVED"
    """
Component has been removed unexpectedly
    """

    def __init__(self, _id, component_type, shop_id, slot, criticality, state = STATE_STARTED):
        """
Constructor __init__(Component)

:param _id: Component ID
:param component_type: Component type instance
:param shop_id: Shop ID
:param slot: Slot index
:param criticality: Criticality in [1, 10]
:param state: Lifecycle state

:since: v0.1.00
        """

        self.component_type = component_type
        """
Component type instance
        """
        self.connectors = [ ]
        """
Connectors bound to a required or provided interface of this component
        """
        self.criticality = criticality
        """
Criticality in [1, 10]
        """
        self.failures = [ ]
        """
Failures (exceptions) observed while started
        """
        self.id = _id
        """
Component ID
        """
        self.shop_id = shop_id
        """
Shop ID
        """
        self.slot = slot
        """
Slot index
        """
        self.state = state
        """
Lifecycle state
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<Component {0} {1}>".format(self.id, self.state)
    #

    def get_connectivity(self):
        """
Returns the number of connectors bound to this component.

:return: (int) Connectivity
:since:  v0.1.00
        """

        return len(self.connectors)
    #

    def get_reliability(self):
        """
Returns the reliability of the component type.

:return: (float) Reliability
:since:  v0.1.00
        """

        return self.component_type.reliability
    #

    def has_crashed_outgoing_connector(self):
        """
Returns true if a crashed connector uses a required interface of this
component.

:return: (bool) True if found
:since:  v0.1.00
        """

        _return = False

        for connector in self.connectors:
            if (connector.source is self and connector.state == connector.STATE_CRASHED):
                _return = True
                break
            #
        #

        return _return
    #
#
