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

from .component import Component

class ChangeEvent(object):
    """
A change event describes one mutation of the architecture model. Events
carry the IDs needed to replay them on a copy of the model.

:author:     direct Netware Group et al.
:copyright:  direct Netware Group - All rights reserved
:package:    healsim
:subpackage: architecture
:since:      v0.1.00
:license:    https://www.direct-netware.de/redirect?licenses;gpl
             GNU General Public License 2
    """

    COMPONENT_CRASHED = "COMPONENT_CRASHED"
    """
Component crashed
    """
    COMPONENT_REMOVED = "COMPONENT_REMOVED"
    """
Component removed unexpectedly
    """
    EXCEPTION_OCCURRED = "EXCEPTION_OCCURRED"
    """
Exception thrown by a started component
    """
    CONNECTOR_CRASHED = "CONNECTOR_CRASHED"
    """
Connector crashed
    """
    COMPONENT_RESTARTED = "COMPONENT_RESTARTED"
    """
Component restarted
    """
    COMPONENT_REDEPLOYED = "COMPONENT_REDEPLOYED"
    """
Component redeployed
    """
    COMPONENT_REPLACED = "COMPONENT_REPLACED"
    """
Component replaced by a new instance of another type
    """
    CONNECTOR_RECREATED = "CONNECTOR_RECREATED"
    """
Connector replaced by a new instance
    """

    def __init__(self, kind, subject, time, previous = None, attributes = None):
        """
Constructor __init__(ChangeEvent)

:param kind: Event kind
:param subject: Component or connector changed
:param time: Virtual time of the change
:param previous: Element replaced by the subject
:param attributes: Additional attributes needed to replay the event

:since: v0.1.00
        """

        self.attributes = ({ } if (attributes is None) else attributes)
        """
Additional attributes needed to replay the event
        """
        self.kind = kind
        """
Event kind
        """
        self.previous = previous
        """
Element replaced by the subject
        """
        self.subject = subject
        """
Component or connector changed
        """
        self.time = time
        """
Virtual time of the change
        """
    #

    def __repr__(self):
        """
python.org: Called by the repr() built-in function to compute the
"official" string representation of an object.

:return: (str) String representation
:since:  v0.1.00
        """

        return "<ChangeEvent {0} {1} t={2!r}>".format(self.kind, self.subject.id, self.time)
    #

    def get_elements(self):
        """
Returns the subject and the replaced element if any.

:return: (list) Elements touched by this event
:since:  v0.1.00
        """

        return ([ self.subject ] if (self.previous is None) else [ self.subject, self.previous ])
    #

    def is_component_event(self):
        """
Returns true if the subject is a component.

:return: (bool) True for component events
:since:  v0.1.00
        """

        return isinstance(self.subject, Component)
    #
#
