# Generated manually for ScanReport model

from django.db import migrations, models
import django.utils.timezone
import model_utils.fields


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='ScanReport',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created', model_utils.fields.AutoCreatedField(default=django.utils.timezone.now, editable=False, verbose_name='created')),
                ('modified', model_utils.fields.AutoLastModifiedField(default=django.utils.timezone.now, editable=False, verbose_name='modified')),
                ('kind', models.CharField(choices=[('collision', 'Collision scan'), ('avalanche', 'Avalanche scan'), ('battery', 'Statistical battery')], db_index=True, max_length=16, verbose_name='Kind')),
                ('seed', models.BigIntegerField(blank=True, null=True, verbose_name='Seed')),
                ('count', models.PositiveIntegerField(help_text='Keys hashed, trials run or bytes tested', verbose_name='Count')),
                ('passed', models.BooleanField(verbose_name='Passed')),
                ('summary', models.JSONField(blank=True, default=dict, verbose_name='Summary')),
            ],
            options={
                'verbose_name': 'scan report',
                'verbose_name_plural': 'scan reports',
                'ordering': ['-created'],
            },
        ),
    ]
