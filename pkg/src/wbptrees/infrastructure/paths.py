import os

from src.wbptrees.infrastructure.config import Infos


class ProjectPath:
    """
    Class that joins paths for the project.
    A simple wrapper for os.path.join, along with some utility methods.
    """

    @staticmethod
    def join(*args):
        return os.path.join(*args)

    @staticmethod
    def get_project_root():
        # src/wbptrees/infrastructure/paths.py -> four levels up
        number_of_goback: int = 4
        path = os.path.abspath(__file__)
        for _ in range(number_of_goback):
            path = os.path.dirname(path)
        if not os.path.isdir(os.path.join(path, "src", Infos.PACKAGE_NAME)):
            raise EnvironmentError(f"The project root path is not correct : {path}. "
                                   f"It does not contain src/{Infos.PACKAGE_NAME}")

        return path

    @staticmethod
    def get_log_folder_path():
        return ProjectPath.join(ProjectPath.get_project_root(), Infos.logs_folder_name)

    @staticmethod
    def get_config_json_file():
        return ProjectPath.join(ProjectPath.get_project_root(), Infos.config_json_file)

    @staticmethod
    def exists(path: str) -> bool:
        return os.path.exists(path)

    @staticmethod
    def get_main_file():
        return ProjectPath.join(ProjectPath.get_project_root(), "src", Infos.PACKAGE_NAME, "application", "program.py")
