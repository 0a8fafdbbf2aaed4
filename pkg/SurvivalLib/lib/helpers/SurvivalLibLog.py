##############################################################################
#
# Copyright (C) SurvivalLib contributors 2026, all rights reserved.
#
# This content is made available according to terms specified in
# LICENSE.txt under the top-level directory of this distribution.
#
##############################################################################
import logging
import sys

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def new_log(id):
    '''create and return a new log'''
    log = logging.getLogger(id)
    # Suppresses "No handlers could be found for logger" errors if logging
    # hasn't been configured.
    if len(log.handlers) == 0:
        log.addHandler(logging.NullHandler())
    return log

DEFAULTLOG = new_log('survivallib')


class SurvivalLibLog(object):
    '''Registry of the per-area loggers used across the library'''
    areas = {}
    defaultlog = DEFAULTLOG

    def get_log(self, id):
        if id in self.areas:
            return self.areas.get(id).get('log')
        return self.defaultlog

    def add_log(self, id, quiet=False, level=logging.NOTSET):
        '''add a new log below the library root'''
        id = str(id)
        if id not in self.areas:
            log = new_log('{}.{}'.format(DEFAULTLOG.name, id))
            # set to error if quiet is True
            log.setLevel('ERROR' if quiet else level)
            self.areas[id] = {'log': log, 'quiet': quiet, 'level': level}
        else:
            log = self.get_log(id)
        return log

    @classmethod
    def set_level(cls, level):
        '''set level for the library root log'''
        DEFAULTLOG.setLevel(level)

    @classmethod
    def enable_log_stderr(cls, log=DEFAULTLOG):
        """
            Enable logging to stderr
        """
        cls._enable_stream(log, sys.stderr)

    @classmethod
    def _enable_stream(cls, log, stream):
        log.propagate = False
        for h in list(log.handlers):
            if isinstance(h, logging.StreamHandler) and not isinstance(h, logging.NullHandler):
                log.removeHandler(h)
        h = logging.StreamHandler(stream)
        h.setFormatter(logging.Formatter(LOG_FORMAT))
        log.addHandler(h)

SURVLOG = SurvivalLibLog()
