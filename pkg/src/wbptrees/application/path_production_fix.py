import os
import sys


def add_project_to_path():
    # src/wbptrees/application/path_production_fix.py: the project root is four levels up
    script_path = os.path.abspath(__file__)

    package_path = os.path.dirname(os.path.dirname(os.path.dirname(script_path)))
    project_path = os.path.dirname(package_path)

    if project_path not in sys.path:
        sys.path.append(project_path)

    if package_path not in sys.path:
        sys.path.append(package_path)
