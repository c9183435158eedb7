from enum import Enum

class ResponseCodeEnum(Enum):
    KOS01 = (400, 1, "Invalid flag shape")
    KOS02 = (400, 1, "Shape could not be parsed")
    KOS03 = (400, 1, "Invalid degree vectors")
    KOS04 = (400, 1, "Edge is not a roof edge")
    KOS05 = (400, 1, "Functional is not in the cone")
    KOS06 = (400, 1, "Roof partition does not match the degrees")
    KOS07 = (400, 1, "Shape is not feasible for the census")
    KOS08 = (400, 1, "Points do not affinely span the space")
    KOS09 = (400, 1, "Truncation order too small")
    KOS10 = (400, 1, "Invalid request")

    KOC01 = (500, 2, "Graph consistency check failed")
    KOC02 = (500, 2, "Reflexivity certificate failed")
    KOC03 = (500, 2, "Unimodularity certificate failed")
    KOC04 = (500, 2, "Cone containment certificate failed")
    KOC05 = (500, 2, "Conifold normal form failed")
    KOC06 = (500, 2, "Functional identity mismatch")
    KOC07 = (500, 2, "Independent oracle disagrees")

    KOG01 = (500, 2, "Internal Server Error")

    KO000 = (200, 0, "Operation successful")

    def __init__(self, http_status, exit_code, message):
        self.http_status = http_status
        self.exit_code = exit_code
        self.message = message

class ResponseCode:
    def __init__(self, response_enum: ResponseCodeEnum):
        self.status = response_enum.http_status == 200
        self.http_status = response_enum.http_status
        self.code = response_enum.name
        self.message = response_enum.message

    def to_dict(self):
        return {
            "status": self.status,
            "code": self.code,
            "message": self.message
        }
