class ShopPathCritical(Exception):
    pass


class InstanceNotValid(Exception):
    pass


class DataMalformatted(Exception):
    pass


class SchedulerNotApplicable(Exception):
    pass


class InstanceTooLarge(Exception):
    pass


class InfeasibleInstance(Exception):
    pass


class BoundViolated(Exception):
    pass
