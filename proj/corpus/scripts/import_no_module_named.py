import requestz
