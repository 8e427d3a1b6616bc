"""
Project package. PyMySQL stands in for mysqlclient when DB_ENGINE=mysql
points the audit-run store at MariaDB.
"""

import pymysql

pymysql.version_info = (2, 2, 1, "final", 0)
pymysql.install_as_MySQLdb()
